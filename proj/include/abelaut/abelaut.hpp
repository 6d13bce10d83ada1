#pragma once

#include "abelaut/enumeration.hpp"
#include "abelaut/error.hpp"
#include "abelaut/formula.hpp"
#include "abelaut/notation.hpp"
#include "abelaut/number_theory.hpp"
#include "abelaut/oracle.hpp"
#include "abelaut/search.hpp"
#include "abelaut/shape.hpp"
#include "abelaut/verify.hpp"
