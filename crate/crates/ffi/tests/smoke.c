#include <stdio.h>
#include "trdeg.h"

int main(void) {
    TrdegRing *zz = NULL;
    TrdegCertificate *cert = NULL;
    char *poly = NULL;
    const char *elems[] = {"12", "18"};

    if (trdeg_ring_parse("ZZ", &zz) != TRDEG_STATUS_OK) return 1;
    if (trdeg_search(zz, zz, elems, 2, "lex:x1>x2", 3, &cert) != TRDEG_STATUS_OK) return 2;
    if (trdeg_certificate_verify(cert) != TRDEG_STATUS_OK) return 3;
    trdeg_certificate_poly(cert, &poly);
    printf("%s\n", poly);
    trdeg_string_free(poly);
    trdeg_certificate_free(cert);
    trdeg_ring_free(zz);

    TrdegRing *bad = NULL;
    TrdegStatus s = trdeg_ring_parse("Zmod(", &bad);
    printf("parse error: %d\n", (int)s);
    return bad == NULL ? 0 : 4;
}
