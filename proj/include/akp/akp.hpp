// akp.hpp -- umbrella header for the whole library.
#pragma once

#include <akp/words.hpp>
#include <akp/exactlinalg.hpp>
#include <akp/oracle.hpp>
#include <akp/templates.hpp>
#include <akp/decider.hpp>
#include <akp/morphism_io.hpp>
#include <akp/report.hpp>
