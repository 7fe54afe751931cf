#pragma once

#include "agisos/agiform.hpp"
#include "agisos/dilation.hpp"
#include "agisos/error.hpp"
#include "agisos/lattice.hpp"
#include "agisos/lp.hpp"
#include "agisos/mediated.hpp"
#include "agisos/poly.hpp"
#include "agisos/rational.hpp"
