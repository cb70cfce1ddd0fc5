#pragma once

#include "composihedra/complex.hpp"
#include "composihedra/counting.hpp"
#include "composihedra/hull.hpp"
#include "composihedra/io.hpp"
#include "composihedra/poset.hpp"
#include "composihedra/rational.hpp"
#include "composihedra/realization.hpp"
#include "composihedra/trees.hpp"
