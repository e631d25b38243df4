/*!
  \file bridgelab.hpp
  \brief Everything
*/

#pragma once

#include <bridgelab/builtin_proofs.hpp>
#include <bridgelab/consequence.hpp>
#include <bridgelab/formula.hpp>
#include <bridgelab/json_io.hpp>
#include <bridgelab/parser.hpp>
#include <bridgelab/proof.hpp>
#include <bridgelab/scenarios.hpp>
#include <bridgelab/semantics.hpp>
#include <bridgelab/temporal.hpp>
#include <bridgelab/truth_value.hpp>
