#pragma once

#include "symspec/bignum.hpp"
#include "symspec/cayley.hpp"
#include "symspec/character.hpp"
#include "symspec/errors.hpp"
#include "symspec/io.hpp"
#include "symspec/oracle.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"
#include "symspec/spectrum.hpp"
