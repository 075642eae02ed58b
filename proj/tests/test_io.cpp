#include <filesystem>
#include <fstream>

#include "projframe/io.hpp"
#include "test_util.hpp"

namespace projframe::testing {
namespace {

using io::json;

TEST(Io, ComplexEncodings) {
  EXPECT_EQ(io::complex_from_json(json::parse("[1.5, -2]")), Complex(1.5, -2.0));
  EXPECT_EQ(io::complex_from_json(json::parse("3")), Complex(3.0, 0.0));
  EXPECT_EQ(io::complex_from_json(json::parse(R"({"re": 1, "im": 2})")), Complex(1.0, 2.0));
  EXPECT_EQ(io::complex_from_json(json::parse(R"({"root": {"num": 1, "den": 4}})")), Complex(0.0, 1.0));
  EXPECT_THROW(io::complex_from_json(json::parse(R"("x")")), Error);
  EXPECT_EQ(io::to_json(Complex(1.0, 2.0)), json::parse("[1.0, 2.0]"));
}

TEST(Io, DoublesRoundTripExactly) {
  Rng rng(51);
  const ComplexVector v = random_vector(16, rng);
  const ComplexVector back = io::vector_from_json(json::parse(io::to_json(v).dump()));
  EXPECT_EQ(back, v);
}

TEST(Io, GroupRoundTrip) {
  const GroupPtr d8 = make_dihedral(4);
  const GroupPtr back = io::group_from_json(json::parse(io::to_json(*d8).dump()));
  EXPECT_TRUE(same_group(*d8, *back));
  EXPECT_EQ(back->element_names(), d8->element_names());
  EXPECT_EQ(io::group_from_json(json("Z2xZ2"))->order(), 4u);
  EXPECT_EQ(io::group_from_json(json::parse(R"({"builtin": "D8"})"))->order(), 8u);
}

TEST(Io, CocycleRoundTripKeepsExactness) {
  std::vector<std::string> names = builtin_cocycle_names();
  std::erase_if(names, [](const std::string& n) { return n.find('<') != std::string::npos; });
  names.push_back("trivial:Z5");
  for (const auto& name : names) {
    const CocyclePtr c = builtin_cocycle(name);
    const CocyclePtr back = io::cocycle_from_json(json::parse(io::to_json(*c).dump()));
    EXPECT_TRUE(back->is_exact()) << name;
    EXPECT_TRUE(back->same_values(*c)) << name;
  }
}

TEST(Io, IrreducibleSetRoundTrip) {
  for (const auto& s : builtin_settings()) {
    const IrreducibleSetPtr back = io::irrset_from_json(json::parse(io::to_json(*s.irreducibles).dump()));
    ASSERT_EQ(back->size(), s.irreducibles->size());
    for (std::size_t i = 0; i < back->size(); ++i) {
      EXPECT_TRUE((*back)[i].exact().has_value()) << s.name;
      EXPECT_EQ((*back)[i].label(), (*s.irreducibles)[i].label());
      for (GroupIndex g = 0; g < back->order(); ++g) EXPECT_EQ((*back)[i](g), (*s.irreducibles)[i](g)) << s.name;
    }
  }
}

TEST(Io, InexactRepStaysInexact) {
  const json j = json::parse(R"({"cocycle": "trivial:Z2", "matrices": [[[1]], [[[-1, 0]]]]})");
  const ProjectiveRep r = io::rep_from_json(j);
  EXPECT_FALSE(r.exact().has_value());
  EXPECT_TRUE(validate_rep(r).ok);
}

TEST(Io, FourierImageByLabel) {
  const auto r = dihedral8_irreducibles();
  const json j = json::parse(R"({"blocks": [{"rho": "rho2", "matrix": [[1, 0], [0, 1]]}, {"rho": "rho1", "matrix": [[0, 0], [0, 0]]}]})");
  const FourierImage img = io::image_from_json(j, r);
  EXPECT_EQ(img[1], ComplexMatrix::identity(2));
  EXPECT_EQ(img[0], ComplexMatrix(2, 2));
  EXPECT_THROW(io::image_from_json(json::parse(R"({"blocks": [{"rho": "nope", "matrix": [[1]]}, {"matrix": [[1]]}]})"), r), Error);
}

TEST(Io, DataFilesLoad) {
  const std::string dir = PROJFRAME_DATA;
  const GAlphaMatrix m = io::galpha_from_json(io::load_file(dir + "/klein_nu.json"));
  EXPECT_EQ(m.nu(), (ComplexVector{1.0, 2.0, 3.0, 4.0}));
  EXPECT_FALSE(validate_cocycle(*io::cocycle_from_json(io::load_file(dir + "/bad_cocycle.json"))).ok);
  EXPECT_TRUE(validate_cocycle(*io::cocycle_from_json(io::load_file(dir + "/klein_cocycle.json"))).ok);
  try {
    io::group_from_json(io::load_file(dir + "/bad_group.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_group);
  }
}

TEST(Io, LoadErrors) {
  try {
    io::load_file("/nonexistent/file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io_error);
  }
  const auto path = std::filesystem::temp_directory_path() / "projframe_bad.json";
  std::ofstream(path) << "{not json";
  try {
    io::load_file(path.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::schema_error);
  }
  std::filesystem::remove(path);
}

TEST(Io, ValidationReportJson) {
  ValidationReport r{false, "bad", {1, 2}, 0.5};
  const json j = io::to_json(r);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["witness"], json::parse("[1, 2]"));
}

}  // namespace
}  // namespace projframe::testing
