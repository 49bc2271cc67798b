#ifndef WEILPOLY_WEILPOLY_HPP
#define WEILPOLY_WEILPOLY_HPP

#include "crosscheck.hpp"
#include "diamond.hpp"
#include "records.hpp"
#include "selftest.hpp"

#endif
