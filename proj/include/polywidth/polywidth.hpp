#pragma once

#include "polywidth/bending.hpp"
#include "polywidth/error.hpp"
#include "polywidth/io.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/linalg.hpp"
#include "polywidth/lp.hpp"
#include "polywidth/polytope.hpp"
#include "polywidth/rational.hpp"
#include "polywidth/sampling.hpp"
#include "polywidth/verify.hpp"
#include "polywidth/volume.hpp"
#include "polywidth/width.hpp"
