"""Water Lily generator (Plants)."""

PARAMS = {
    "size": 1.571,
    "detail": 4,
    "roughness": 0.663,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Water Lily"
    for key, value in params.items():
        node[key] = value
    return node
