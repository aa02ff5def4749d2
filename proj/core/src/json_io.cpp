#include "schurtab/json_io.hpp"

#include "json_detail.hpp"

namespace schurtab {

namespace detail {

json fillingToJson(const Filling& f) {
    json j;
    j["shape"] = f.shape().partition().parts();
    j["spin"] = f.shape().spin();
    j["rank"] = f.shape().rank();
    j["rows"] = f.rows();
    if (f.shape().spin()) j["half"] = f.half();
    return j;
}

Filling fillingFromJson(const json& j) {
    try {
        Partition partition(j.at("shape").get<std::vector<int>>());
        bool spin = j.value("spin", false);
        int rank = j.at("rank").get<int>();
        Shape shape(partition, rank, spin);
        auto rows = j.at("rows").get<std::vector<std::vector<Sym>>>();
        std::vector<Sym> half;
        if (spin) half = j.at("half").get<std::vector<Sym>>();
        return Filling::fromRows(shape, rows, half);
    } catch (const json::exception& e) {
        fail(ErrorCode::Usage, std::string("malformed filling JSON: ") + e.what());
    }
}

json formalSumToJson(const FormalSum& x) {
    json terms = json::array();
    for (const auto& [f, c] : x.terms())
        terms.push_back(json{{"filling", fillingToJson(f)}, {"coeff", ratToString(c)}});
    return json{{"terms", std::move(terms)}};
}

FormalSum formalSumFromJson(const json& j) {
    if (j.contains("rows")) { // a bare filling
        FormalSum x;
        x.addCanonicalized(fillingFromJson(j), 1);
        return x;
    }
    try {
        FormalSum x;
        for (const json& t : j.at("terms"))
            x.addCanonicalized(fillingFromJson(t.at("filling")),
                               ratFromString(t.at("coeff").get<std::string>()));
        return x;
    } catch (const json::exception& e) {
        fail(ErrorCode::Usage, std::string("malformed formal sum JSON: ") + e.what());
    }
}

json straightenReportToJson(const StraightenReport& r) {
    return json{{"input", formalSumToJson(r.input)},
                {"output", formalSumToJson(r.output)},
                {"steps", r.steps},
                {"method",
                 r.method == StraightenMethod::Combinatorial ? "combinatorial" : "linear-solve"}};
}

json laurentToJson(const Laurent& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json coeff;
        if (c.fits_slong_p()) coeff = c.get_si();
        else coeff = c.get_str();
        terms.push_back(json{{"exp2", e}, {"coeff", std::move(coeff)}});
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

} // namespace detail

std::string toJson(const Filling& f) { return detail::fillingToJson(f).dump(); }

Filling fillingFromJson(const std::string& text) {
    detail::json j = detail::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Usage, "malformed JSON");
    return detail::fillingFromJson(j);
}

std::string toJson(const FormalSum& x) { return detail::formalSumToJson(x).dump(); }

FormalSum formalSumFromJson(const std::string& text) {
    detail::json j = detail::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Usage, "malformed JSON");
    return detail::formalSumFromJson(j);
}

std::string toJson(const StraightenReport& report) {
    return detail::straightenReportToJson(report).dump();
}

} // namespace schurtab
