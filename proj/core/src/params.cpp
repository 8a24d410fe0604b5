#include "evohealth/params.hpp"

#include <cmath>
#include <string_view>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

namespace evohealth {
namespace {

void require_finite(std::string_view name, double v) {
    if (!std::isfinite(v)) {
        throw RangeError(std::string(name), "must be finite, got " + format_double(v));
    }
}

void require_open_unit(std::string_view name, double v) {
    require_finite(name, v);
    if (!(v > 0.0 && v < 1.0)) {
        throw RangeError(std::string(name), "must lie in (0,1), got " + format_double(v));
    }
}

void require_positive(std::string_view name, double v) {
    require_finite(name, v);
    if (!(v > 0.0)) {
        throw RangeError(std::string(name), "must be > 0, got " + format_double(v));
    }
}

void require_non_negative(std::string_view name, double v) {
    require_finite(name, v);
    if (!(v >= 0.0)) {
        throw RangeError(std::string(name), "must be >= 0, got " + format_double(v));
    }
}

}  // namespace

Stage1Params validate_stage1(Stage1Params raw) {
    require_positive("phi", raw.phi);
    require_open_unit("alpha", raw.alpha);
    require_open_unit("gamma", raw.gamma);
    require_open_unit("p", raw.p);
    require_positive("c_hat", raw.c_hat);
    require_positive("mu", raw.mu);
    require_non_negative("kappa", raw.kappa);
    raw.y_hat = raw.c_hat / (1.0 - raw.gamma);
    if (!std::isfinite(raw.y_hat) || !(raw.y_hat > raw.c_hat)) {
        throw RangeError("c_hat", "survival income c_hat/(1-gamma) must be finite and exceed c_hat");
    }
    return raw;
}

Stage2Params validate_stage2(Stage2Params raw) {
    require_positive("phi", raw.phi);
    require_open_unit("alpha", raw.alpha);
    require_open_unit("beta", raw.beta);
    require_open_unit("gamma", raw.gamma);
    require_open_unit("p", raw.p);
    require_positive("lambda_fixed", raw.lambda_fixed);
    require_finite("delta0", raw.delta0);
    require_finite("delta1", raw.delta1);
    require_open_unit("delta_min", raw.delta_min);
    require_open_unit("delta_max", raw.delta_max);
    if (raw.delta_min > raw.delta_max) {
        throw RangeError("delta_max", "must be >= delta_min");
    }
    return raw;
}

Stage3Params validate_stage3(Stage3Params raw) {
    require_positive("A", raw.A);
    require_open_unit("alpha", raw.alpha);
    require_open_unit("gamma", raw.gamma);
    require_open_unit("p", raw.p);
    return raw;
}

std::string describe(const Stage1Params& p) {
    return "phi=" + format_double(p.phi) + ";alpha=" + format_double(p.alpha) +
           ";gamma=" + format_double(p.gamma) + ";p=" + format_double(p.p) +
           ";c_hat=" + format_double(p.c_hat) + ";mu=" + format_double(p.mu) +
           ";kappa=" + format_double(p.kappa);
}

std::string describe(const Stage2Params& p) {
    return "phi=" + format_double(p.phi) + ";alpha=" + format_double(p.alpha) +
           ";beta=" + format_double(p.beta) + ";gamma=" + format_double(p.gamma) +
           ";p=" + format_double(p.p) + ";lambda_fixed=" + format_double(p.lambda_fixed) +
           ";delta0=" + format_double(p.delta0) + ";delta1=" + format_double(p.delta1) +
           ";delta_min=" + format_double(p.delta_min) + ";delta_max=" + format_double(p.delta_max);
}

std::string describe(const Stage3Params& p) {
    return "A=" + format_double(p.A) + ";alpha=" + format_double(p.alpha) +
           ";gamma=" + format_double(p.gamma) + ";p=" + format_double(p.p);
}

}  // namespace evohealth
