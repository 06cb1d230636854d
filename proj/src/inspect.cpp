#include "cosym/inspect.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "cosym/contact.hpp"

namespace cosym {
namespace {

nlohmann::json rat_list(const Vec<Rat>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(format_rational(v[i]));
  return out;
}

nlohmann::json rat_matrix(const Mat<Rat>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rat_list(m.row(i)));
  return out;
}

nlohmann::json geodesic_json(const Geodesic<Rat>& g) {
  return {{"position", rat_list(g.position)}, {"velocity", rat_list(g.velocity)}};
}

std::string join(const nlohmann::json& list, const char* sep) {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += sep;
    out += item.get<std::string>();
  }
  return out;
}

}  // namespace

Geodesic<Rat> parse_geodesic(const std::string& text, std::size_t dim) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument(
        "geodesic literal must be \"x1,..,xn;v1,..,vn\" with exactly one ';'");
  const auto parse_block = [&](const std::string& block, const char* what) {
    std::vector<Rat> entries;
    std::string item;
    std::istringstream stream(block);
    while (std::getline(stream, item, ',')) entries.push_back(parse_rational(item));
    if (entries.size() != dim)
      throw std::invalid_argument(std::string(what) + " needs exactly " +
                                  std::to_string(dim) + " components");
    return Vec<Rat>(std::move(entries));
  };
  Vec<Rat> x = parse_block(text.substr(0, semi), "position");
  Vec<Rat> v = parse_block(text.substr(semi + 1), "velocity");
  if (v.is_zero())
    throw std::invalid_argument("zero velocity: not a geodesic phase point");
  return Geodesic<Rat>(std::move(x), std::move(v));
}

nlohmann::json inspect_point(const RunConfig& cfg, const Geodesic<Rat>& gamma) {
  const Metric g(cfg.plus, cfg.minus);
  if (gamma.dim() != g.dim())
    throw std::invalid_argument("inspect: geodesic dimension does not match the signature");

  nlohmann::json out;
  out["signature"] = {cfg.plus, cfg.minus};
  out["gamma"] = geodesic_json(gamma);

  const CausalClass<Rat> cc = causal_class(g, gamma.velocity);
  out["causal"] = {{"h", format_rational(cc.h)}, {"kind", to_string(cc.kind)}};
  out["energy"] = format_rational(energy(g, gamma));

  const Mat<Rat> gram = orbit_gram(g, gamma);
  out["orbit"] = {{"gram", rat_matrix(gram)}, {"rank", rank(gram)}};

  const Subspace<Rat> horizontal = orbit_symplectic_orthogonal(g, gamma);
  nlohmann::json basis = nlohmann::json::array();
  for (const Vec<Rat>& b : horizontal.basis()) basis.push_back(rat_list(b));
  out["horizontal"] = {{"dim", horizontal.dim()}, {"basis", std::move(basis)}};

  const GaugeChart chart = choose_chart(g, gamma);
  out["chart"] = {{"label", label(chart)}, {"dim", chart_dim(g, chart)}};

  const ChartPoint<Rat> cp = gauge_fix(g, chart, gamma);
  out["representative"] = geodesic_json(cp.representative);
  out["coords"] = rat_list(cp.coords);

  const QuotientStructure<Rat> qs = compute_sigma(g, cp);
  out["sigma"] = {{"matrix", rat_matrix(qs.sigma)}, {"rank", qs.sigma_rank}};

  if (cc.kind == CausalKind::Null) {
    const ContactData<Rat> cd = contact_data(g, cp);
    out["contact"] = {{"alpha", rat_list(cd.alpha)},
                      {"d_alpha", rat_matrix(cd.d_alpha)},
                      {"kernel_dim", cd.kernel.dim()},
                      {"volume", format_rational(cd.volume_value)}};
  } else {
    out["contact"] = nullptr;
  }
  return out;
}

std::string inspect_text(const nlohmann::json& dump) {
  std::ostringstream os;
  os << "signature       (" << dump["signature"][0].get<std::size_t>() << ","
     << dump["signature"][1].get<std::size_t>() << ")\n";
  os << "gamma           x = (" << join(dump["gamma"]["position"], ", ") << ")\n";
  os << "                v = (" << join(dump["gamma"]["velocity"], ", ") << ")\n";
  os << "causal class    " << dump["causal"]["kind"].get<std::string>()
     << "  (g(v,v) = " << dump["causal"]["h"].get<std::string>() << ")\n";
  os << "energy          " << dump["energy"].get<std::string>() << "\n";
  os << "orbit gram      rank " << dump["orbit"]["rank"].get<std::size_t>();
  for (const auto& row : dump["orbit"]["gram"]) os << "  [" << join(row, " ") << "]";
  os << "\n";
  os << "horizontal dim  " << dump["horizontal"]["dim"].get<std::size_t>() << "\n";
  os << "chart           " << dump["chart"]["label"].get<std::string>() << " (dim "
     << dump["chart"]["dim"].get<std::size_t>() << ")\n";
  os << "representative  x = (" << join(dump["representative"]["position"], ", ") << ")\n";
  os << "                v = (" << join(dump["representative"]["velocity"], ", ") << ")\n";
  os << "coords          (" << join(dump["coords"], ", ") << ")\n";
  os << "sigma           rank " << dump["sigma"]["rank"].get<std::size_t>() << "\n";
  for (const auto& row : dump["sigma"]["matrix"])
    os << "                [" << join(row, " ") << "]\n";
  if (!dump["contact"].is_null()) {
    os << "contact alpha   (" << join(dump["contact"]["alpha"], ", ") << ")\n";
    os << "contact kernel  dim " << dump["contact"]["kernel_dim"].get<std::size_t>() << "\n";
    os << "contact volume  " << dump["contact"]["volume"].get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace cosym
