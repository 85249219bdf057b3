"""Carbon Weave 09 Material generator (Materials)."""

PARAMS = {
    "size": 1.554,
    "detail": 5,
    "roughness": 0.436,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
