// Copyright 2026 The hsearch Authors. All rights reserved.
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

#ifndef HSEARCH_HSEARCH_H_
#define HSEARCH_HSEARCH_H_

#include "hsearch/arrays.h"
#include "hsearch/errors.h"
#include "hsearch/ising.h"
#include "hsearch/matrix_io.h"
#include "hsearch/polynomial.h"
#include "hsearch/polynomial_io.h"
#include "hsearch/prototype.h"
#include "hsearch/quadratize.h"
#include "hsearch/sequences.h"
#include "hsearch/sign_matrix.h"
#include "hsearch/solver.h"
#include "hsearch/turyn.h"
#include "hsearch/williamson.h"

#endif  // HSEARCH_HSEARCH_H_
