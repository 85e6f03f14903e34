#include "qsb/exactla.hpp"

#include <json.hpp>

namespace qsb {

using nlohmann::json;

namespace {

json mat_json(const Mat& m) {
    json e = json::array();
    for (const auto& x : m.entries()) e.push_back(x.str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Mat mat_of(const json& j) {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    const auto& e = j.at("entries");
    if (r < 0 || c < 0 || e.size() != std::size_t(r) * std::size_t(c))
        throw ParseError("matrix entry count does not match shape");
    Mat m(r, c);
    for (std::size_t k = 0; k < e.size(); ++k) m.entries()[k] = Scalar::parse(e[k].get<std::string>());
    return m;
}

}  // namespace

std::string to_json(const Mat& m, int indent) { return mat_json(m).dump(indent); }

Mat mat_from_json(const std::string& text) {
    try {
        return mat_of(json::parse(text));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("matrix json: ") + ex.what());
    }
}

std::string to_json(const LabeledOp& op, int indent) {
    json j = mat_json(op.mat);
    j["dom"] = op.dom;
    j["cod"] = op.cod;
    return j.dump(indent);
}

LabeledOp labeled_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        LabeledOp op;
        op.mat = mat_of(j);
        op.dom = j.at("dom").get<std::vector<std::string>>();
        op.cod = j.at("cod").get<std::vector<std::string>>();
        if (int(op.dom.size()) != op.mat.cols() || int(op.cod.size()) != op.mat.rows())
            throw ParseError("label counts do not match matrix shape");
        return op;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("labeled op json: ") + ex.what());
    }
}

}  // namespace qsb
