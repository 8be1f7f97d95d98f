/*
   Copyright 2026 The tropindex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TROPINDEX_TROPINDEX_HPP
#define TROPINDEX_TROPINDEX_HPP

#include "error.hpp"
#include "indices.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"
#include "preservers.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "realroot.hpp"
#include "sqrt_scalar.hpp"
#include "verify.hpp"

#endif  // TROPINDEX_TROPINDEX_HPP
