#pragma once

// Umbrella header.

#include "foldcalc/abelian.hpp"
#include "foldcalc/bundles.hpp"
#include "foldcalc/construct.hpp"
#include "foldcalc/labels.hpp"
#include "foldcalc/manifold.hpp"
#include "foldcalc/obstruct.hpp"
#include "foldcalc/oracle.hpp"
#include "foldcalc/script.hpp"
#include "foldcalc/serialize.hpp"
