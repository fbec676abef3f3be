#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "sturmian/abelian_returns.hpp"
#include "sturmian/binary_word.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/delta_sequence.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/induction.hpp"
#include "sturmian/integers.hpp"
#include "sturmian/interval_exchange.hpp"
#include "sturmian/io.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/sampling.hpp"
