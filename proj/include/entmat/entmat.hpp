#pragma once

#include "entmat/classify.hpp"
#include "entmat/entmatrix.hpp"
#include "entmat/errors.hpp"
#include "entmat/formulas.hpp"
#include "entmat/geometry.hpp"
#include "entmat/graph.hpp"
#include "entmat/io.hpp"
#include "entmat/statevector.hpp"
#include "entmat/verify.hpp"
