#pragma once

#include <turanp/bigcount.hpp>
#include <turanp/canonical.hpp>
#include <turanp/constructions.hpp>
#include <turanp/degree.hpp>
#include <turanp/error.hpp>
#include <turanp/family_spec.hpp>
#include <turanp/formulas.hpp>
#include <turanp/graph.hpp>
#include <turanp/graph6.hpp>
#include <turanp/oracle.hpp>
#include <turanp/patterns.hpp>
#include <turanp/transforms.hpp>
#include <turanp/verify.hpp>
