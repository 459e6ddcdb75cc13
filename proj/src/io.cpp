#include "heckec/io.hpp"

namespace heckec {

namespace {

nlohmann::json expJson(const ExpVec& e) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < e.n; ++i) a.push_back(int(e.e[i]));
    return a;
}

nlohmann::json maskJson(unsigned mask) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) a.push_back(i + 1);
    return a;
}

nlohmann::json windowJson(const SignedPerm& w) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 1; i <= w.rank(); ++i) {
        auto [j, s] = w.act(i);
        a.push_back(s * j);
    }
    return a;
}

nlohmann::json headJson(const char* algebra, const WeylType& t) {
    return {{"algebra", algebra},
            {"family", familyName(t.family)},
            {"n", t.n}};
}

}  // namespace

nlohmann::json toJson(const CycScalar& c) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) a.push_back(ratStr(c.coord(i)));
    return a;
}

nlohmann::json toJson(const ParamPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [e, c] : p.terms())
        a.push_back({{"t", e.et}, {"u", e.eu}, {"v", e.ev}, {"z8", toJson(c)}});
    return a;
}

nlohmann::json toJson(const DahcaElem& e) {
    nlohmann::json j = headJson("dahca", e.type());
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : e.terms())
        j["terms"].push_back({{"x", expJson(m.x)},
                              {"c", maskJson(m.eps)},
                              {"w", windowJson(m.w)},
                              {"y", expJson(m.y)},
                              {"coeff", toJson(c)}});
    return j;
}

nlohmann::json toJson(const SdahaElem& e) {
    nlohmann::json j = headJson("sdaha", e.type());
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : e.terms())
        j["terms"].push_back({{"xi", expJson(m.xi)},
                              {"t", windowJson(m.w)},
                              {"y", expJson(m.y)},
                              {"coeff", toJson(c)}});
    return j;
}

nlohmann::json toJson(const CdahaElem& e) {
    nlohmann::json j = headJson("cdaha", e.type());
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : e.terms())
        j["terms"].push_back({{"xt", expJson(m.x)},
                              {"z", m.g.zexp},
                              {"wt", windowJson(m.g.w)},
                              {"yt", expJson(m.y)},
                              {"coeff", toJson(c)}});
    return j;
}

nlohmann::json toJson(const DahaElem& e) {
    nlohmann::json j = headJson("daha", e.type());
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : e.terms())
        j["terms"].push_back({{"x", expJson(m.x)},
                              {"w", windowJson(m.w)},
                              {"y", expJson(m.y)},
                              {"coeff", toJson(c)}});
    return j;
}

nlohmann::json toJson(const TensorSdahaElem& e) {
    nlohmann::json j = headJson("tensor-sdaha", e.type());
    j["terms"] = nlohmann::json::array();
    for (auto& [key, c] : e.terms())
        j["terms"].push_back({{"c", maskJson(key.first)},
                              {"xi", expJson(key.second.xi)},
                              {"t", windowJson(key.second.w)},
                              {"y", expJson(key.second.y)},
                              {"coeff", toJson(c)}});
    return j;
}

nlohmann::json toJson(const PolyModElem& e, const std::string& varName) {
    nlohmann::json j;
    j["module"] = "C[" + varName + "] (x) C_n";
    j["n"] = e.rank();
    j["terms"] = nlohmann::json::array();
    for (auto& [key, c] : e.terms())
        j["terms"].push_back({{"f", expJson(key.first)},
                              {"basis", maskJson(key.second)},
                              {"coeff", toJson(c)}});
    return j;
}

}  // namespace heckec
