#pragma once

#include "ricci/assignment.hpp"
#include "ricci/curvature.hpp"
#include "ricci/edge_list.hpp"
#include "ricci/generators.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/theorems.hpp"
#include "ricci/transport.hpp"
