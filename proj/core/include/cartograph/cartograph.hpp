#pragma once

// Umbrella header: the whole public API.

#include "cartograph/cli.hpp"
#include "cartograph/compare.hpp"
#include "cartograph/error.hpp"
#include "cartograph/graph.hpp"
#include "cartograph/incidence.hpp"
#include "cartograph/io.hpp"
#include "cartograph/layout.hpp"
#include "cartograph/ordering.hpp"
#include "cartograph/render.hpp"
