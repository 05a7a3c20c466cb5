/* Builds the 4-cycle, prints its exact law and entropy, and exercises error reporting. */
#include <stdio.h>
#include <string.h>

#include "dice_entropy.h"

int main(void) {
    DiceHypergraph *h = NULL;
    if (dice_hypergraph_cycle(4, &h) != DICE_STATUS_OK) {
        return 1;
    }
    DicePmf *p = NULL;
    if (dice_pmf_exact(h, DICE_ENGINE_ENUMERATE, &p) != DICE_STATUS_OK) {
        return 2;
    }
    for (size_t i = 0; i < dice_pmf_len(p); i++) {
        int64_t x;
        double prob;
        char *exact = NULL;
        dice_pmf_get(p, i, &x, &prob);
        dice_pmf_get_exact(p, i, &exact);
        printf("%lld %s %.6f\n", (long long)x, exact, prob);
        dice_string_free(exact);
    }
    double bits;
    dice_pmf_entropy(p, &bits);
    printf("entropy %.5f\n", bits);

    DiceHypergraph *bad = NULL;
    size_t vertices[] = {0, 0};
    DiceStatus s = dice_hypergraph_new(2, 2, vertices, 1, &bad);
    printf("status %d %s\n", (int)s, bad == NULL && strlen(dice_last_error()) > 0 ? "message" : "none");

    dice_pmf_free(p);
    dice_hypergraph_free(h);
    return 0;
}
