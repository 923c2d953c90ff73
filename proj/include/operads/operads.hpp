#pragma once

#include "operads/algebra.hpp"
#include "operads/collection.hpp"
#include "operads/endomorphism.hpp"
#include "operads/enumerate.hpp"
#include "operads/finite_operad.hpp"
#include "operads/free_operad.hpp"
#include "operads/permutation.hpp"
#include "operads/sc.hpp"
#include "operads/sc_algebra.hpp"
#include "operads/tree.hpp"
#include "operads/types.hpp"
