#pragma once

#include "solviso/bench.hpp"
#include "solviso/cayley_io.hpp"
#include "solviso/decomposition.hpp"
#include "solviso/element_set.hpp"
#include "solviso/errors.hpp"
#include "solviso/families.hpp"
#include "solviso/graphenc.hpp"
#include "solviso/graphiso.hpp"
#include "solviso/group.hpp"
#include "solviso/iso_engine.hpp"
#include "solviso/ordering.hpp"
#include "solviso/series.hpp"
#include "solviso/stats.hpp"
#include "solviso/sylow.hpp"
