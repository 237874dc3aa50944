/* C interface to the persistence library.  Documents are opaque handles
 * around parsed JSON artifacts; every operation takes and returns documents
 * so the surface stays stable as the schemas evolve.  Functions return a
 * status code; on failure tda_last_error() describes what went wrong.
 * Output documents are set on TDA_OK and, where noted, on TDA_ERR_CERT
 * (the operation ran but its certificate failed). */

#ifndef TDA_H
#define TDA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tda_doc tda_doc;

typedef enum {
    TDA_OK = 0,
    TDA_ERR_PARSE = 1,    /* malformed JSON text */
    TDA_ERR_INVALID = 2,  /* schema or invariant violation */
    TDA_ERR_CERT = 3,     /* computation ran, certificate failed */
    TDA_ERR_INTERNAL = 4
} tda_status;

/* JSON schema version of all artifacts ("1"). */
const char* tda_schema_version(void);

/* Message for the most recent failure on this thread. */
const char* tda_last_error(void);

tda_status tda_doc_parse(const char* text, tda_doc** out);
tda_status tda_doc_dump(const tda_doc* doc, char** out_text);
void tda_doc_free(tda_doc* doc);
void tda_str_free(char* text);

/* Zigzag module -> zigzag barcode {"bars": [[first, last], ...]}. */
tda_status tda_decompose(const tda_doc* zigzag, tda_doc** out);

/* Zigzag module -> block barcode of its extension. */
tda_status tda_extend(const tda_doc* zigzag, tda_doc** out);

/* kind: "1d" (two decorated barcodes), "block" (two block barcodes) or
 * "zigzag" (two zigzag modules).  Output {"distance": "p/q" | "inf"}. */
tda_status tda_bottleneck(const tda_doc* a, const tda_doc* b, const char* kind, tda_doc** out);

/* PL graph -> {"blocks", "levels", "certified"}; TDA_ERR_CERT when the
 * pointwise certificate fails (output still written). */
tda_status tda_levelset(const tda_doc* graph, int degree, tda_doc** out);

/* Stability experiment: per-trial realized d_inf against the block and
 * level barcode distances.  TDA_ERR_CERT if any trial violates the bound. */
tda_status tda_perturb(const tda_doc* graph, const char* delta, int trials,
                       unsigned long long seed, tda_doc** out);

/* Input {"left", "right", "pairs"}; builds the interleaving witness at eps
 * and verifies it.  TDA_ERR_CERT when the matching is rejected or the
 * witness fails verification. */
tda_status tda_witness(const tda_doc* input, const char* eps, tda_doc** out);

/* Grid module -> {"xi1": n} at the lattice point (zx, zy). */
tda_status tda_betti(const tda_doc* module, long long zx, long long zy, tda_doc** out);

/* Grid morphism -> {"module", "free"}; TDA_ERR_CERT when the interpolant is
 * not free across the window interior. */
tda_status tda_interpolant(const tda_doc* morphism, unsigned long long eps, tda_doc** out);

/* Two PL graphs -> {"bound": "p/q" | "inf"}, a lower bound for the Reeb
 * interleaving distance. */
tda_status tda_reeb_bound(const tda_doc* g1, const tda_doc* g2, tda_doc** out);

#ifdef __cplusplus
}
#endif

#endif /* TDA_H */
