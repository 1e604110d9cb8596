#pragma once

#include "bohr/series.hpp"
#include "bohr/lemma_bounds.hpp"
#include "bohr/polynomial.hpp"
#include "bohr/functionals.hpp"
#include "bohr/sharp_constants.hpp"
#include "bohr/certify.hpp"
#include "bohr/radius_finder.hpp"
#include "bohr/sampler.hpp"
#include "bohr/report.hpp"
#include "bohr/cli.hpp"
