"""River Pebble generator (Rocks)."""

PARAMS = {
    "size": 1.884,
    "detail": 2,
    "roughness": 0.152,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Pebble"
    for key, value in params.items():
        node[key] = value
    return node
