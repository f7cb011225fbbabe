/* A minimal consumer of the C interface: parse the Heisenberg datum, build
 * the extension, and decide splitness. Build from the repository root with
 *
 *   cargo build -p liext-ffi
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      target/debug/libliext_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "liext.h"

static const char *heisenberg_datum =
    "{"
    "  \"g\": {\"name\": \"a2\", \"basis\": [\"e1\", \"e2\"], \"brackets\": {}},"
    "  \"h\": {\"name\": \"a1\", \"basis\": [\"e1\"], \"brackets\": {}},"
    "  \"alpha\": [[[\"0\"]], [[\"0\"]]],"
    "  \"rho\": {\"[e1,e2]\": {\"e1\": \"1\"}}"
    "}";

static void check(liext_status status, const char *what) {
    if (status != LIEXT_OK) {
        fprintf(stderr, "%s: %s\n", what, liext_last_error());
        exit(1);
    }
}

int main(void) {
    liext_data *data = NULL;
    check(liext_data_parse(heisenberg_datum, &data), "parse");
    check(liext_data_check(data), "check");

    liext_extension *extension = NULL;
    check(liext_build(data, &extension), "build");
    size_t dim = 0;
    check(liext_extension_dim(extension, &dim), "dim");
    printf("built a %zu-dimensional extension\n", dim);

    bool splits = false;
    check(liext_split_abelian(data, &splits, NULL), "split");
    printf("splits: %s\n", splits ? "yes" : "no");

    liext_extension_free(extension);
    liext_data_free(data);
    return 0;
}
