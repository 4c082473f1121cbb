#include <gtest/gtest.h>

#include "qcurl/spaces.hpp"

using namespace qcurl;

namespace {

std::vector<PolyField> joined(std::vector<PolyField> a, const std::vector<PolyField>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST(Spaces, Dimensions) {
  const SpaceLibrary& lib = reference_spaces();
  EXPECT_EQ(lib.wk.dim(), 18);
  EXPECT_EQ(lib.vk.dim(), 24);
  EXPECT_EQ(lib.nedelec.dim(), 12);
  EXPECT_EQ(lib.q1.dim(), 8);
  EXPECT_EQ(lib.vm.dim(), 144);
  EXPECT_EQ(lib.wm.dim(), 108);
  for (SpaceTag t : {SpaceTag::WK, SpaceTag::VK, SpaceTag::NedelecK, SpaceTag::Q1K, SpaceTag::VM, SpaceTag::WM}) {
    const ElementSpace& s = lib.get(t);
    EXPECT_EQ(static_cast<int>(s.dofs.size()), s.dim());
    EXPECT_EQ(numerical_rank(s.span), s.dim()) << to_string(t);
  }
}

TEST(Spaces, Unisolvence) {
  const SpaceLibrary& lib = reference_spaces();
  for (SpaceTag t : {SpaceTag::WK, SpaceTag::VK, SpaceTag::NedelecK, SpaceTag::Q1K, SpaceTag::VM, SpaceTag::WM}) {
    const ElementSpace& s = lib.get(t);
    EXPECT_LT(s.duality_defect(), 1e-8) << to_string(t);
    const Eigen::MatrixXd m = s.dof_matrix(s.dual);
    EXPECT_LT((m - Eigen::MatrixXd::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff(), 1e-8) << to_string(t);
  }
}

TEST(Spaces, VkContainsGradQ1AndRotatedWk) {
  const SpaceLibrary& lib = reference_spaces();
  std::vector<PolyField> grads;
  for (const PolyField& q : lib.q1.span) grads.push_back(PolyField::gradient(q[0]));
  EXPECT_EQ(numerical_rank(joined(lib.vk.span, grads)), 24);
  std::vector<PolyField> rotated;
  for (const PolyField& w : lib.wk.span) rotated.push_back(w.cross_from_left({0.0, 0.0, 0.0}));
  EXPECT_EQ(numerical_rank(joined(lib.vk.span, rotated)), 24);
}

TEST(Spaces, WkHasNoMixedMonomials) {
  for (const PolyField& w : span_WK()) {
    for (int c = 0; c < 3; ++c) EXPECT_FALSE(w[c].has_mixed_monomials());
  }
}

TEST(Spaces, MacroSpacesAreTensorProducts) {
  // V_M = Q233 x Q323 x Q332, W_M = Q322 x Q232 x Q223.
  const SpaceLibrary& lib = reference_spaces();
  for (const PolyField& v : lib.vm.span) {
    for (int c = 0; c < 3; ++c) {
      MultiIndex cap{3, 3, 3};
      cap[c] = 2;
      v[c].for_each_term([&](const MultiIndex& e, double) {
        for (int a = 0; a < 3; ++a) EXPECT_LE(e[a], cap[a]);
      });
    }
  }
  for (const PolyField& w : lib.wm.span) {
    for (int c = 0; c < 3; ++c) {
      MultiIndex cap{2, 2, 2};
      cap[c] = 3;
      w[c].for_each_term([&](const MultiIndex& e, double) {
        for (int a = 0; a < 3; ++a) EXPECT_LE(e[a], cap[a]);
      });
    }
  }
}

TEST(Spaces, CurlInclusion) {
  const SpaceLibrary& lib = reference_spaces();
  EXPECT_LE(curl_inclusion_residual(lib.vk, lib.wk), 1e-12);
  EXPECT_LE(curl_inclusion_residual(lib.vm, lib.wm), 1e-12);
  EXPECT_FALSE(check_curl_inclusion(lib.vm, lib.wk));
}

TEST(Spaces, PerturbationBreaksCurlInclusion) {
  const SpaceLibrary bad = SpaceLibrary::build({1e-3});
  EXPECT_LT(bad.vk.duality_defect(), 1e-8);
  EXPECT_GT(curl_inclusion_residual(bad.vk, bad.wk), 1e-6);
}

TEST(Spaces, DofKindsAndPlacement) {
  const SpaceLibrary& lib = reference_spaces();
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(lib.vk.dofs[i].kind, DofKind::EdgeTangential);
    EXPECT_EQ(lib.vk.dofs[i].axis, i / 4);
    EXPECT_EQ(lib.vk.dofs[i].region.dimension(), 1);
  }
  for (int i = 12; i < 24; ++i) {
    EXPECT_EQ(lib.vk.dofs[i].kind, DofKind::FaceTangentialCurl);
    EXPECT_EQ(lib.vk.dofs[i].normal_axis, (i - 12) / 4);
  }
  for (int i = 0; i < 18; ++i) {
    EXPECT_EQ(lib.wk.dofs[i].kind, i % 3 == 2 ? DofKind::FaceNormal : DofKind::FaceTangential);
    EXPECT_EQ(lib.wk.dofs[i].region.dimension(), 2);
  }
  EXPECT_EQ(lib.q1.dofs[7].kind, DofKind::VertexValue);
  EXPECT_DOUBLE_EQ(lib.q1.dofs[7].region.lo[2], 0.5);
}

TEST(Spaces, NedelecEdgeDofsAgreeWithVk) {
  // The first 12 V_K DoFs are the Nedelec DoFs, in the same order.
  const SpaceLibrary& lib = reference_spaces();
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(lib.nedelec.dofs[i].kind, lib.vk.dofs[i].kind);
    EXPECT_EQ(lib.nedelec.dofs[i].axis, lib.vk.dofs[i].axis);
    for (int a = 0; a < 3; ++a) EXPECT_DOUBLE_EQ(lib.nedelec.dofs[i].region.lo[a], lib.vk.dofs[i].region.lo[a]);
  }
}
