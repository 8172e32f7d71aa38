#pragma once

#include "germlab/checked.hpp"
#include "germlab/pairs_tree.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/chains.hpp"
#include "germlab/blowup.hpp"
#include "germlab/charts.hpp"
#include "germlab/permutation.hpp"
#include "germlab/monodromy.hpp"
#include "germlab/serialize.hpp"
#include "germlab/verify.hpp"
