// Copyright 2026 The colq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef COLQ_COLQ_HPP
#define COLQ_COLQ_HPP

// Core library. The service, HTTP and CLI layers have their own headers.
#include "colq/canonical.hpp"
#include "colq/class_a.hpp"
#include "colq/class_d.hpp"
#include "colq/cycles.hpp"
#include "colq/enumeration.hpp"
#include "colq/error.hpp"
#include "colq/gabriel.hpp"
#include "colq/io.hpp"
#include "colq/mutation.hpp"
#include "colq/quiver.hpp"

#endif  // COLQ_COLQ_HPP
