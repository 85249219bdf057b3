"""Fern Cluster generator (Plants)."""

PARAMS = {
    "size": 0.452,
    "detail": 2,
    "roughness": 0.275,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Fern Cluster"
    for key, value in params.items():
        node[key] = value
    return node
