#include <stdio.h>
#include <string.h>

#include "signed_alliance.h"

int main(void) {
    const char *text = "v1 v2 -\nv1 v3 -\nv2 v3 +\nv2 v4 -\nv3 v4 +\n"
                       "v2 v6 -\nv3 v5 -\nv4 v5 -\nv4 v6 +\nv5 v6 +\n";
    SdaGraph *g = NULL;
    if (sda_graph_parse(text, &g) != SDA_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", sda_last_error());
        return 1;
    }
    char *doc = NULL;
    SdaStatus s = sda_min_alliance(g, 3, SDA_NO_VERTEX, &doc);
    printf("%zu %d %s\n", sda_graph_vertex_count(g), (int)s, doc);
    sda_string_free(doc);
    sda_graph_free(g);
    return s == SDA_STATUS_OK ? 0 : 1;
}
