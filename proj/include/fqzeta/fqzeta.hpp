#ifndef FQZETA_FQZETA_HPP
#define FQZETA_FQZETA_HPP

// Everything except the command-line layer.

#include "fqzeta/combinatorics.hpp"
#include "fqzeta/error.hpp"
#include "fqzeta/finite_field.hpp"
#include "fqzeta/laurent.hpp"
#include "fqzeta/poly.hpp"
#include "fqzeta/powersums.hpp"
#include "fqzeta/ratfunc.hpp"
#include "fqzeta/record.hpp"
#include "fqzeta/relations.hpp"

#endif  // FQZETA_FQZETA_HPP
