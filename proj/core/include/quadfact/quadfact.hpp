#pragma once

#include "quadfact/element_factorization.hpp"
#include "quadfact/errors.hpp"
#include "quadfact/hilbert_monoid.hpp"
#include "quadfact/ideal_arith.hpp"
#include "quadfact/integer.hpp"
#include "quadfact/pairing.hpp"
#include "quadfact/prime_spectrum.hpp"
#include "quadfact/quad_ideal.hpp"
#include "quadfact/quad_int.hpp"
#include "quadfact/text.hpp"
