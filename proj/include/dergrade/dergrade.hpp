#pragma once

#include "algebra.hpp"
#include "coefficient.hpp"
#include "coset_key.hpp"
#include "derivation.hpp"
#include "error.hpp"
#include "free_abelian.hpp"
#include "grading.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "heisenberg.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "verify.hpp"
#include "word.hpp"
