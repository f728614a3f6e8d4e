#pragma once

#include "qslab/census.hpp"
#include "qslab/counting.hpp"
#include "qslab/perm.hpp"
#include "qslab/preimage.hpp"
#include "qslab/queuesort.hpp"
#include "qslab/verify.hpp"
