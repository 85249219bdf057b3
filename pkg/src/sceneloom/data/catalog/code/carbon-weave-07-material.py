"""Carbon Weave 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.997,
    "detail": 4,
    "roughness": 0.234,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
