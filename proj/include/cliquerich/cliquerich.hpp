#pragma once

#include "cliquerich/census.hpp"
#include "cliquerich/clubs.hpp"
#include "cliquerich/experiment.hpp"
#include "cliquerich/fixtures.hpp"
#include "cliquerich/graph.hpp"
#include "cliquerich/io.hpp"
#include "cliquerich/netgen.hpp"
#include "cliquerich/pipeline.hpp"
#include "cliquerich/rank.hpp"
