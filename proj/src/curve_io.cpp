#include "upp/curve_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace upp {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string extToText(const ExtValue& v) { return v.str(); }

ExtValue extFromText(const std::string& text) {
  if (text == "inf" || text == "+inf") return ExtValue::plusInfinity();
  if (text == "-inf") return ExtValue::minusInfinity();
  return ExtValue(Rational::fromString(text));
}

Rational rationalField(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError("missing or non-string field \"" + key + "\"");
  return Rational::fromString(j[key].get<std::string>());
}

ExtValue extField(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError("missing or non-string field \"" + key + "\"");
  return extFromText(j[key].get<std::string>());
}

Curve curveFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sequence") || !j["sequence"].is_array())
    throw ParseError("curve JSON must be an object with a \"sequence\" array");
  std::vector<Element> elems;
  for (const auto& ej : j["sequence"]) {
    if (ej.contains("point")) {
      const auto& p = ej["point"];
      elems.push_back(Point{rationalField(p, "t"), extField(p, "v")});
    } else if (ej.contains("segment")) {
      const auto& s = ej["segment"];
      elems.push_back(Segment(rationalField(s, "start"),
                              rationalField(s, "end"),
                              extField(s, "rightLimitAtStart"),
                              extField(s, "leftLimitAtEnd")));
    } else {
      throw ParseError("sequence entry is neither a point nor a segment");
    }
  }
  return Curve(Sequence(std::move(elems)), rationalField(j, "T"),
               rationalField(j, "d"), rationalField(j, "c"));
}

nlohmann::json parseJsonText(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string curveToJsonText(const Curve& f) {
  OrderedJson j;
  OrderedJson seq = OrderedJson::array();
  for (const Element& e : f.baseSequence().elements()) {
    OrderedJson entry;
    if (isPoint(e)) {
      const Point& p = asPoint(e);
      entry["point"] = {{"t", p.time.str()}, {"v", extToText(p.value)}};
    } else {
      const Segment& s = asSegment(e);
      entry["segment"] = {{"start", s.start.str()},
                          {"end", s.end.str()},
                          {"rightLimitAtStart", extToText(s.rightLimitAtStart)},
                          {"leftLimitAtEnd", extToText(s.leftLimitAtEnd)}};
    }
    seq.push_back(entry);
  }
  j["sequence"] = seq;
  j["T"] = f.pseudoPeriodStart().str();
  j["d"] = f.pseudoPeriodLength().str();
  j["c"] = f.pseudoPeriodHeight().str();
  return j.dump(2) + "\n";
}

Curve curveFromJsonText(const std::string& text) {
  try {
    return curveFromJson(parseJsonText(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed curve JSON: ") + e.what());
  }
}

Curve loadCurveFile(const std::string& path) {
  return curveFromJsonText(readFile(path));
}

IwrrConfig iwrrConfigFromJsonText(const std::string& text) {
  const nlohmann::json j = parseJsonText(text);
  try {
    if (!j.is_object() || !j.contains("weights") || !j.contains("beta"))
      throw ParseError("IWRR config needs \"weights\" and \"beta\"");
    IwrrConfig cfg{std::vector<std::int64_t>{},
                   {},
                   {},
                   1,
                   curveFromJson(j["beta"])};
    for (const auto& w : j["weights"])
      cfg.weights.push_back(w.get<std::int64_t>());
    for (const auto& v : j["minPacket"])
      cfg.minPacket.push_back(Rational::fromString(v.get<std::string>()));
    for (const auto& v : j["maxPacket"])
      cfg.maxPacket.push_back(Rational::fromString(v.get<std::string>()));
    cfg.flowIndex = j.value("flowIndex", 1);
    validateIwrrConfig(cfg);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed IWRR config: ") + e.what());
  }
}

IwrrConfig loadIwrrConfigFile(const std::string& path) {
  return iwrrConfigFromJsonText(readFile(path));
}

}  // namespace upp
