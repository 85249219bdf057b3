"""Door Handle generator (Indoors)."""

PARAMS = {
    "size": 0.661,
    "detail": 1,
    "roughness": 0.005,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Door Handle"
    for key, value in params.items():
        node[key] = value
    return node
