#pragma once

#include "cszidx/bounds.hpp"
#include "cszidx/csz_index.hpp"
#include "cszidx/errors.hpp"
#include "cszidx/graph.hpp"
#include "cszidx/graph_io.hpp"
#include "cszidx/join_family.hpp"
#include "cszidx/oeis_client.hpp"
#include "cszidx/search.hpp"
