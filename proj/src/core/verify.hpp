/*
 * Copyright 2026 The pfaffkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFAFFKIT_VERIFY_HPP
#define PFAFFKIT_VERIFY_HPP

#include <string>
#include <vector>

#include "verify_common.hpp"

namespace pfaffkit {

VerificationReport verify_prop31(const VerifyParams& p);
VerificationReport verify_yang_baxter(const VerifyParams& p);
VerificationReport verify_change_of_basis(const VerifyParams& p);
VerificationReport verify_plucker(const VerifyParams& p);
VerificationReport verify_kronecker(const VerifyParams& p);

VerificationReport verify_pfaffzg(const VerifyParams& p);
VerificationReport verify_pfaffabz(const VerifyParams& p);
VerificationReport verify_okada_split(const VerifyParams& p);
VerificationReport verify_sundquist(const VerifyParams& p);
VerificationReport verify_powers(const VerifyParams& p);
VerificationReport verify_factor_out(const VerifyParams& p);

VerificationReport verify_det_symmetry(const VerifyParams& p);
VerificationReport verify_schur_det(const VerifyParams& p);
VerificationReport verify_cd(const VerifyParams& p);
VerificationReport verify_powers_det(const VerifyParams& p);
VerificationReport verify_detaz(const VerifyParams& p);

const std::vector<std::string>& verification_ids();
/* Dispatches on id, fills theorem, parameters and elapsed time. Throws ParameterError. */
VerificationReport run_verification(const std::string& id, const VerifyParams& p);

}  // namespace pfaffkit

#endif
