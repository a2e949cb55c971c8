#pragma once

// Umbrella header.

#include "negabeta/admissibility.hpp"
#include "negabeta/algebraic.hpp"
#include "negabeta/beta_integers.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"
#include "negabeta/polynomial.hpp"
#include "negabeta/rational.hpp"
#include "negabeta/serialize.hpp"
#include "negabeta/word_coding.hpp"
