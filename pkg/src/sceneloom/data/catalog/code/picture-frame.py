"""Picture Frame generator (Indoors)."""

PARAMS = {
    "size": 0.316,
    "detail": 3,
    "roughness": 0.627,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Picture Frame"
    for key, value in params.items():
        node[key] = value
    return node
