#pragma once

#include "bigint.hpp"
#include "blowup.hpp"
#include "canonical.hpp"
#include "combinat.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "floor_diagram.hpp"
#include "invariant.hpp"
#include "json_io.hpp"
#include "lemmas.hpp"
#include "markings.hpp"
#include "multipoly.hpp"
#include "polygon.hpp"
#include "qpoly.hpp"
#include "series.hpp"
