/*
   Copyright 2026, the sincfrac authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace sincfrac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid configuration (tolerances, orders, windows, grids).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure did not reach its tolerance. Carries the best
/// estimate it had and the error bound it achieved.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// The space-fractional Sumudu image has a vanishing denominator.
class SingularityError : public NumericError {
public:
    SingularityError(const std::string& what, double zeta, double s)
        : NumericError(what, 0.0, 0.0), zeta_(zeta), s_(s) {}

    double zeta() const noexcept { return zeta_; }
    double s() const noexcept { return s_; }

private:
    double zeta_;
    double s_;
};

}  // namespace sincfrac
