#pragma once

#include "powerdio/compfactor.hpp"
#include "powerdio/decide.hpp"
#include "powerdio/decompose.hpp"
#include "powerdio/dickson.hpp"
#include "powerdio/errors.hpp"
#include "powerdio/parse.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/powersum.hpp"
#include "powerdio/rational.hpp"
#include "powerdio/stdpairs.hpp"
