#pragma once

// Umbrella header: the whole engine in one include.

#include "ansatz.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "jobs.hpp"
#include "json_io.hpp"
#include "linear.hpp"
#include "multipoly.hpp"
#include "parser.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "signature.hpp"
#include "term_order.hpp"
#include "torus.hpp"
#include "tuple.hpp"
#include "version.hpp"
#include "weyl.hpp"
#include "zeta.hpp"
