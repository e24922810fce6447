#include "pcf/types.hpp"

namespace pcf {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::ModerateSeries: return "moderate_series";
        case Regime::LargeArgAsymptotic: return "large_arg_asymptotic";
        case Regime::ClosedForm: return "closed_form";
    }
    return "unknown";
}

std::string_view to_string(Function f) {
    switch (f) {
        case Function::U: return "U";
        case Function::V: return "V";
        case Function::W: return "W";
    }
    return "?";
}

}  // namespace pcf
