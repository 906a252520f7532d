#pragma once

#include "polarauto/error.hpp"
#include "polarauto/eval_vector.hpp"
#include "polarauto/monomial.hpp"
#include "polarauto/gf2.hpp"
#include "polarauto/code.hpp"
#include "polarauto/permutation.hpp"
#include "polarauto/stabilizer_chain.hpp"
#include "polarauto/affine.hpp"
#include "polarauto/automorphism.hpp"
#include "polarauto/exact_search.hpp"
#include "polarauto/theorems.hpp"
#include "polarauto/json_io.hpp"
