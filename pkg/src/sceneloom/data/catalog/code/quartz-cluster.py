"""Quartz Cluster generator (Rocks)."""

PARAMS = {
    "size": 1.291,
    "detail": 5,
    "roughness": 0.465,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Quartz Cluster"
    for key, value in params.items():
        node[key] = value
    return node
