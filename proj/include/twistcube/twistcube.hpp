#pragma once

#include "twistcube/cartier.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/harness.hpp"
#include "twistcube/io.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/render.hpp"
#include "twistcube/rootdata.hpp"
#include "twistcube/twistedcube.hpp"
#include "twistcube/walks.hpp"
#include "twistcube/weightword.hpp"
#include "twistcube/witness.hpp"
