#pragma once

#include "hgfree/arith.hpp"
#include "hgfree/contfrac.hpp"
#include "hgfree/error.hpp"
#include "hgfree/exponents.hpp"
#include "hgfree/params.hpp"
#include "hgfree/report.hpp"
#include "hgfree/structmat.hpp"
#include "hgfree/tateoort.hpp"
#include "hgfree/verdict.hpp"
#include "hgfree/verify.hpp"
