#pragma once

// Umbrella header: the whole parahilb library.

#include "parahilb/cells.hpp"
#include "parahilb/commands.hpp"
#include "parahilb/fock.hpp"
#include "parahilb/genfun.hpp"
#include "parahilb/json.hpp"
#include "parahilb/lattice.hpp"
#include "parahilb/lemmas.hpp"
#include "parahilb/parallel.hpp"
#include "parahilb/polynomial.hpp"
#include "parahilb/series.hpp"
#include "parahilb/weights.hpp"
