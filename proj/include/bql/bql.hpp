#pragma once

// Umbrella header.

#include "bql/aut.hpp"
#include "bql/braid.hpp"
#include "bql/conjugator.hpp"
#include "bql/cosets.hpp"
#include "bql/fpres.hpp"
#include "bql/garside.hpp"
#include "bql/harness.hpp"
#include "bql/perm.hpp"
#include "bql/perm_group.hpp"
#include "bql/smith.hpp"
#include "bql/word.hpp"
