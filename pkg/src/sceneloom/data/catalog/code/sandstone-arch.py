"""Sandstone Arch generator (Rocks)."""

PARAMS = {
    "size": 0.29,
    "detail": 4,
    "roughness": 0.509,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sandstone Arch"
    for key, value in params.items():
        node[key] = value
    return node
