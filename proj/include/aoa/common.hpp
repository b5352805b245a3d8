// SPDX-License-Identifier: Apache-2.0
//
// aoa-toolkit — gridless angle-of-arrival estimation for MIMO radar
// Copyright (C) 2026 aoa-toolkit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AOA_COMMON_HPP
#define AOA_COMMON_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace aoa
{
    inline constexpr double kPi = 3.141592653589793238462643383279502884;

    using cplx = std::complex<double>;

    inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
    inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

    // dB <-> linear amplitude (20 log10) and linear power (10 log10)
    inline double lin_from_db(double db) { return std::pow(10.0, db / 20.0); }
    inline double db_from_lin(double lin) { return 20.0 * std::log10(lin); }
    inline double db_from_power(double p) { return 10.0 * std::log10(p); }

    // Power floor keeps log10 finite when rendering empty spectrum cells.
    inline double db_from_power_floored(double p, double floor_db = -400.0)
    {
        double f = std::pow(10.0, floor_db / 10.0);
        return 10.0 * std::log10(p > f ? p : f);
    }

    inline void require(bool cond, const std::string &msg)
    {
        if (!cond)
            throw std::invalid_argument(msg);
    }

    inline void require_runtime(bool cond, const std::string &msg)
    {
        if (!cond)
            throw std::runtime_error(msg);
    }
}

#endif
