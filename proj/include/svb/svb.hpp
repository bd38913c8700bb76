#pragma once

#include "svb/braid_word.hpp"
#include "svb/desing.hpp"
#include "svb/equivalence.hpp"
#include "svb/errors.hpp"
#include "svb/gauss.hpp"
#include "svb/io.hpp"
#include "svb/permutation.hpp"
#include "svb/pure.hpp"
#include "svb/random.hpp"
#include "svb/relations.hpp"
#include "svb/search.hpp"
#include "svb/surface.hpp"
#include "svb/verify.hpp"
