#ifndef QWCAVITY_HPP
#define QWCAVITY_HPP

#include "qwcavity/basis.hpp"
#include "qwcavity/config.hpp"
#include "qwcavity/csv.hpp"
#include "qwcavity/dynamics.hpp"
#include "qwcavity/errors.hpp"
#include "qwcavity/events.hpp"
#include "qwcavity/hermitian_eigen.hpp"
#include "qwcavity/measures.hpp"
#include "qwcavity/oracle.hpp"
#include "qwcavity/phase_space.hpp"
#include "qwcavity/quadrature.hpp"
#include "qwcavity/runner.hpp"
#include "qwcavity/svg.hpp"

#endif
