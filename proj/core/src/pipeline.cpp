#include "tileforge/connectivity.hpp"
#include "tileforge/spectrum.hpp"

namespace tileforge {

PipelineResult pipeline_connected_digits(const IntMatrix& a) {
  require_dilation(a);
  JordanDecomposition dec = jordan_decompose(a);

  std::vector<DigitSet> blocks;
  std::vector<ShellCertificate> certificates;
  for (const auto& block : dec.blocks) {
    certificates.push_back(shell_certificate(block.eigenvalue, block.size));
    blocks.push_back(block_digit_set(block.eigenvalue, block.size));
  }
  DigitSet jordan_digits = product_digit_set(blocks);
  DigitSet digits = map_digit_set(dec.similarity, jordan_digits);
  ResidueCheck residue = is_complete_residue_system(a, digits);

  ConnectivityVerdict verdict;
  verdict.status = Status::connected;
  verdict.criterion = Criterion::pipeline;
  verdict.witness = "all " + std::to_string(certificates.size()) +
                    " Jordan block certificates passed; T(A, P D_J) = P T(J, D_J) is connected";

  return PipelineResult{std::move(dec),           std::move(blocks), std::move(certificates), std::move(jordan_digits),
                        std::move(digits),        std::move(residue), std::move(verdict)};
}

}  // namespace tileforge
