#pragma once

#include "extremal/classifier.hpp"
#include "extremal/density.hpp"
#include "extremal/graph.hpp"
#include "extremal/lp.hpp"
#include "extremal/numeric.hpp"
#include "extremal/oracle.hpp"
#include "extremal/scalar_search.hpp"
#include "extremal/weightings.hpp"
