#ifndef SIGRB_SIGRB_HPP
#define SIGRB_SIGRB_HPP

#include <sigrb/audit.hpp>
#include <sigrb/experiment.hpp>
#include <sigrb/field.hpp>
#include <sigrb/generators.hpp>
#include <sigrb/gm_engine.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>
#include <sigrb/problem.hpp>
#include <sigrb/rb_engine.hpp>
#include <sigrb/signature.hpp>
#include <sigrb/verifier.hpp>

#endif
