#pragma once

#include "chk/catalog.hpp"
#include "chk/chk_poly.hpp"
#include "chk/field.hpp"
#include "chk/fock.hpp"
#include "chk/linalg.hpp"
#include "chk/quadrature.hpp"
#include "chk/relations.hpp"
#include "chk/structure.hpp"
#include "chk/suite.hpp"
