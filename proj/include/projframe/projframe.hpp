#pragma once

#include "projframe/blockdiag.hpp"
#include "projframe/builtins.hpp"
#include "projframe/cocycle.hpp"
#include "projframe/error.hpp"
#include "projframe/fourier.hpp"
#include "projframe/frames.hpp"
#include "projframe/galpha_matrix.hpp"
#include "projframe/group.hpp"
#include "projframe/numerics.hpp"
#include "projframe/random.hpp"
#include "projframe/repn.hpp"
#include "projframe/roots.hpp"
