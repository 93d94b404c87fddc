#include "sf2/report.hpp"

namespace sf2 {

nlohmann::json degree_json(const CheckReport& rep, const DegreeOutcome& o) {
    nlohmann::json j;
    j["check"] = rep.check;
    j["degree"] = o.degree;
    j["pass"] = o.pass;
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [k, v] : o.dims) dims[k] = v;
    j["dims"] = std::move(dims);
    if (o.witness) j["witness"] = *o.witness;
    if (rep.conjecture) j["status"] = "evidence";
    return j;
}

nlohmann::json report_json(const CheckReport& rep) {
    nlohmann::json j;
    j["check"] = rep.check;
    j["status"] = rep.conjecture ? "evidence" : "theorem";
    j["pass"] = rep.pass();
    nlohmann::json degrees = nlohmann::json::array();
    for (const DegreeOutcome& o : rep.degrees) degrees.push_back(degree_json(rep, o));
    j["degrees"] = std::move(degrees);
    return j;
}

std::string report_text(const CheckReport& rep) {
    std::string out;
    for (const DegreeOutcome& o : rep.degrees) {
        out += rep.check;
        out += " d=" + std::to_string(o.degree);
        out += o.pass ? " pass" : " FAIL";
        if (rep.conjecture) out += " [evidence]";
        if (!o.dims.empty()) {
            out += "  (";
            for (std::size_t i = 0; i < o.dims.size(); ++i) {
                if (i) out += ", ";
                out += o.dims[i].first + "=" + std::to_string(o.dims[i].second);
            }
            out += ")";
        }
        if (o.witness) out += "  witness: " + *o.witness;
        out += '\n';
    }
    return out;
}

}  // namespace sf2
