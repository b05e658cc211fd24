#pragma once

#include "mirrorpoly/error.hpp"
#include "mirrorpoly/rational.hpp"
#include "mirrorpoly/matrix.hpp"
#include "mirrorpoly/normal_form.hpp"
#include "mirrorpoly/polynomial.hpp"
#include "mirrorpoly/group.hpp"
#include "mirrorpoly/lattice.hpp"
#include "mirrorpoly/polytope.hpp"
#include "mirrorpoly/io.hpp"
#include "mirrorpoly/pipeline.hpp"
