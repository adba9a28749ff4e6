#pragma once

#include "rscrit/degrees.hpp"
#include "rscrit/error.hpp"
#include "rscrit/hodge_critical.hpp"
#include "rscrit/oracles.hpp"
#include "rscrit/rational.hpp"
#include "rscrit/weights.hpp"
#include "rscrit/weyl.hpp"
