#include <stdio.h>
#include <string.h>
#include "qecc.h"

int main(void) {
    QeccRegistry *reg = NULL;
    QeccCode *code = NULL;
    QeccOracleResult r;
    QeccBoundResult b;

    if (qecc_registry_bundled(&reg) != QECC_STATUS_OK) return 10;
    if (qecc_code_from_registry(reg, "laflamme-5-1-3", &code) != QECC_STATUS_OK) return 11;
    if (qecc_code_n(code) != 5 || qecc_code_k(code) != 1) return 12;
    if (qecc_verify_joint(code, 1, &r) != QECC_STATUS_OK || !r.pass || r.states != 32) return 13;
    if (qecc_hamming_bound(5, 1, 1, &b) != QECC_STATUS_OK || !b.perfect) return 14;
    if (qecc_min_n_for(5, 1) != 10) return 15;
    if (qecc_code_from_registry(reg, "missing", &code) != QECC_STATUS_UNKNOWN_CODE) return 16;
    if (strstr(qecc_last_error_message(), "missing") == NULL) return 17;
    qecc_code_free(code);
    qecc_registry_free(reg);
    printf("ok\n");
    return 0;
}
