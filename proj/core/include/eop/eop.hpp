#ifndef EOP_EOP_HPP
#define EOP_EOP_HPP

#include "eop/assembly.hpp"
#include "eop/coeffpoly.hpp"
#include "eop/errors.hpp"
#include "eop/extensions.hpp"
#include "eop/numverify.hpp"
#include "eop/orthopoly.hpp"
#include "eop/params.hpp"
#include "eop/scalar.hpp"
#include "eop/sectors.hpp"
#include "eop/variants.hpp"

#endif
