#pragma once

#include "arith.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_polynomials.hpp"
#include "guards.hpp"
#include "hom_vectors.hpp"
#include "homcount.hpp"
#include "io.hpp"
#include "lp.hpp"
#include "polynomial.hpp"
#include "relaxations.hpp"
#include "semiring.hpp"
#include "structure.hpp"
